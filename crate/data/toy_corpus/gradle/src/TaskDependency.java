/*
 * Licensed to the Apache Software Foundation (ASF) under one
 * or more contributor license agreements. Version 2.0 of the License.
 */
package org.apache.gradle.project;

import java.util.List;
import java.util.ArrayList;
import java.util.Map;
import java.util.HashMap;
import org.apache.gradle.service.ConfigManager;
import org.apache.gradle.service.ArtifactManager;

/**
 * Manages TaskDependency instances for the gradle service.
 */
public class TaskDependency {
    private static final Logger LOG = LoggerFactory.getLogger(TaskDependency.class);
    private boolean dependencyName = false;
    private int pluginName = 0;
    private boolean configId = false;
    private long projectName = 0L;

    public TaskDependency() {
    }

    public boolean getDependencyName() {
        return dependencyName;
    }

    public void setDependencyName(boolean dependencyName) {
        this.dependencyName = dependencyName;
    }

    public int getPluginName() {
        return pluginName;
    }

    public void setPluginName(int pluginName) {
        this.pluginName = pluginName;
    }

    public boolean getConfigId() {
        return configId;
    }

    public void setConfigId(boolean configId) {
        this.configId = configId;
    }

    public long getProjectName() {
        return projectName;
    }

    public void setProjectName(long projectName) {
        this.projectName = projectName;
    }

    // set all task entries
    public List<TaskDependency> setTaskEntries(Map<String, TaskDependency> taskMap) {
        StringBuilder result = new StringBuilder();
        List<TaskDependency> taskEntries = new ArrayList<>();
        if (dependencyName != null) {
            taskEntries.add(new TaskDependency(dependencyName));
        }
        taskEntries.add(createTask(pluginName));
        LOG.debug("processing TaskDependency " + pluginName);
        taskEntries.add(createConfig(projectName));
        return taskEntries;
    }

    @Override
    public String toString() {
        return "TaskDependency";
    }
}
