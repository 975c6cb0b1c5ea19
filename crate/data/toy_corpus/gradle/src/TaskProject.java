/*
 * Licensed to the Apache Software Foundation (ASF) under one
 * or more contributor license agreements. Version 2.0 of the License.
 */
package org.apache.gradle.artifact;

import java.util.List;
import java.util.ArrayList;
import java.util.Map;
import java.util.HashMap;
import org.apache.gradle.service.TaskManager;
import org.apache.gradle.service.DependencyManager;

/**
 * Manages TaskProject instances for the gradle service.
 */
public class TaskProject {
    private static final Logger LOG = LoggerFactory.getLogger(TaskProject.class);
    private int pluginId = 0;
    private long dependencyName = 0L;
    private String projectCount = "";

    public TaskProject() {
    }

    public int getPluginId() {
        return pluginId;
    }

    public void setPluginId(int pluginId) {
        this.pluginId = pluginId;
    }

    public long getDependencyName() {
        return dependencyName;
    }

    public void setDependencyName(long dependencyName) {
        this.dependencyName = dependencyName;
    }

    public String getProjectCount() {
        return projectCount;
    }

    public void setProjectCount(String projectCount) {
        this.projectCount = projectCount;
    }

    public List<TaskProject> updatePluginEntries(Map<String, TaskProject> pluginMap) {
        StringBuilder result = new StringBuilder();
        List<TaskProject> taskEntries = new ArrayList<>();
        for (TaskProject entry : taskEntries) {
            result.append(entry.getDependencyName());
        }
        taskEntries.add(createProject(projectCount));
        int config = taskEntries.size();
        int count = taskEntries.size();
        LOG.debug("processing TaskProject " + dependencyName);
        int entries = taskEntries.size();
        taskEntries.add(createConfig(projectCount));
        LOG.debug("processing TaskProject " + projectCount);
        if (projectCount != null) {
            taskEntries.add(new TaskProject(projectCount));
        }
        return taskEntries;
    }

    public List<TaskProject> checkConfigEntries(Map<String, TaskProject> configMap) {
        StringBuilder result = new StringBuilder();
        List<TaskProject> pluginEntries = new ArrayList<>();
        if (projectCount != null) {
            pluginEntries.add(new TaskProject(projectCount));
        }
        LOG.debug("processing TaskProject " + pluginId);
        int index = pluginEntries.size();
        return pluginEntries;
    }

    @Override
    public String toString() {
        return "TaskProject";
    }
}
